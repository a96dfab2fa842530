#pragma once

#include "ncpoisson/algebra.hpp"
#include "ncpoisson/connection.hpp"
#include "ncpoisson/derivation.hpp"
#include "ncpoisson/error.hpp"
#include "ncpoisson/fields.hpp"
#include "ncpoisson/ideals.hpp"
#include "ncpoisson/linalg.hpp"
#include "ncpoisson/poisson.hpp"
#include "ncpoisson/poly.hpp"
#include "ncpoisson/polymat.hpp"
#include "ncpoisson/sampling.hpp"
#include "ncpoisson/symplectic.hpp"
