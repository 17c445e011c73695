#pragma once

// Umbrella header.

#include <toeplitz/axioms.hpp>
#include <toeplitz/basis.hpp>
#include <toeplitz/circle_measure.hpp>
#include <toeplitz/coalgebra.hpp>
#include <toeplitz/compact.hpp>
#include <toeplitz/diagonal.hpp>
#include <toeplitz/element.hpp>
#include <toeplitz/expr.hpp>
#include <toeplitz/functional.hpp>
#include <toeplitz/measure_syntax.hpp>
#include <toeplitz/numerics.hpp>
#include <toeplitz/random.hpp>
#include <toeplitz/scalar.hpp>
#include <toeplitz/tensor.hpp>
#include <toeplitz/trig_polynomial.hpp>
