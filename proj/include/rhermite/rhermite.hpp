#pragma once

#include "rhermite/errata.hpp"
#include "rhermite/inner_product.hpp"
#include "rhermite/io.hpp"
#include "rhermite/operators.hpp"
#include "rhermite/oscillator.hpp"
#include "rhermite/params.hpp"
#include "rhermite/poly.hpp"
#include "rhermite/polynomials.hpp"
#include "rhermite/rational.hpp"
#include "rhermite/verify.hpp"
