#pragma once

// Umbrella header for the irredundant-orthogonal-array toolkit.

#include "iroa/array.hpp"
#include "iroa/certify.hpp"
#include "iroa/code.hpp"
#include "iroa/construct.hpp"
#include "iroa/errors.hpp"
#include "iroa/field.hpp"
#include "iroa/io.hpp"
#include "iroa/limits.hpp"
#include "iroa/matrix.hpp"
#include "iroa/version.hpp"
