#pragma once
// Umbrella header.

#include "salem/certify.hpp"
#include "salem/constraints.hpp"
#include "salem/factorize.hpp"
#include "salem/hunt.hpp"
#include "salem/ilp.hpp"
#include "salem/modp.hpp"
#include "salem/numeric.hpp"
#include "salem/polynomial.hpp"
#include "salem/roots.hpp"
#include "salem/table.hpp"
#include "salem/transform.hpp"
