#pragma once

#include "weyl/classifier.hpp"
#include "weyl/element.hpp"
#include "weyl/errors.hpp"
#include "weyl/expr.hpp"
#include "weyl/geometry.hpp"
#include "weyl/harness.hpp"
#include "weyl/jacobian.hpp"
#include "weyl/morphisms.hpp"
#include "weyl/scalar.hpp"
