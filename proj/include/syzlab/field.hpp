#pragma once

// Scalar fields usable with Matrix<F> and the elimination routines: each
// provides is_zero(F) and bit_size(F) overloads in namespace syzlab.
#include "syzlab/cyclotomic.hpp"
#include "syzlab/rational.hpp"
