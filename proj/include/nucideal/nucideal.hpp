#pragma once

#include "nucideal/tensor_index.hpp"
#include "nucideal/polynomial.hpp"
#include "nucideal/poly_io.hpp"
#include "nucideal/ideals.hpp"
#include "nucideal/groebner.hpp"
#include "nucideal/ratfield.hpp"
#include "nucideal/certificates.hpp"
#include "nucideal/numeric_oracle.hpp"
