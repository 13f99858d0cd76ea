#ifndef NCMUT_NCMUT_HPP
#define NCMUT_NCMUT_HPP

#include "ncmut/golden.hpp"
#include "ncmut/scalar.hpp"
#include "ncmut/rank2.hpp"
#include "ncmut/bmatrix.hpp"
#include "ncmut/canonical.hpp"
#include "ncmut/mutation_class.hpp"
#include "ncmut/matrix_io.hpp"
#include "ncmut/reference_data.hpp"
#include "ncmut/verify.hpp"

#endif
