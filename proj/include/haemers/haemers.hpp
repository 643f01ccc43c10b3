#pragma once

#include "haemers/base.hpp"
#include "haemers/bounds.hpp"
#include "haemers/builtin.hpp"
#include "haemers/chif.hpp"
#include "haemers/field.hpp"
#include "haemers/graph.hpp"
#include "haemers/lift.hpp"
#include "haemers/matrix.hpp"
#include "haemers/oracle.hpp"
#include "haemers/representation.hpp"
#include "haemers/subspace.hpp"
