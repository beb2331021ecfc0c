#pragma once

#include "treedyn/block_enum.hpp"
#include "treedyn/dynamics.hpp"
#include "treedyn/edge_subset.hpp"
#include "treedyn/error.hpp"
#include "treedyn/fixed_enum.hpp"
#include "treedyn/generators.hpp"
#include "treedyn/io.hpp"
#include "treedyn/oracle.hpp"
#include "treedyn/pure_enum.hpp"
#include "treedyn/tree.hpp"
