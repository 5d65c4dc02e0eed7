#pragma once

// Umbrella header: the whole engine.
//
//   qseries.hpp / residue_series.hpp   windowed Laurent series (Z and Z/m)
//   series_core.hpp                    eta products, Eisenstein series,
//                                      partition generating functions
//   jpolynomial.hpp                    Z[X] and series over Z[X]
//   modular_functions.hpp              j, J, Faber system, extremal Z_k
//   congruences.hpp                    Ramanujan-type congruence checks
//   bigfloat.hpp / rademacher.hpp      certified Rademacher numerics
//   quadforms.hpp / singular_moduli.hpp  CM traces and the blended identity

#include "bigfloat.hpp"
#include "congruences.hpp"
#include "convolution.hpp"
#include "errors.hpp"
#include "jpolynomial.hpp"
#include "modular_functions.hpp"
#include "qseries.hpp"
#include "quadforms.hpp"
#include "rademacher.hpp"
#include "residue_series.hpp"
#include "series_core.hpp"
#include "singular_moduli.hpp"
