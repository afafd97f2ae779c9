#pragma once

#include "caps.hpp"
#include "claims.hpp"
#include "code.hpp"
#include "construct.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "formulas.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "matroid.hpp"
#include "search.hpp"
#include "subspaces.hpp"
