#pragma once

#include "griess/algebra_json.hpp"
#include "griess/bplus.hpp"
#include "griess/catalog.hpp"
#include "griess/error.hpp"
#include "griess/f2matrix.hpp"
#include "griess/f2quad.hpp"
#include "griess/modular.hpp"
#include "griess/qmatrix.hpp"
#include "griess/rational.hpp"
#include "griess/root_algebra.hpp"
#include "griess/root_system.hpp"
#include "griess/structure_algebra.hpp"
#include "griess/tables.hpp"
#include "griess/verify.hpp"
