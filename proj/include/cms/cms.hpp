#pragma once

#include "cms/acceptance.hpp"
#include "cms/errors.hpp"
#include "cms/exponent.hpp"
#include "cms/gl12.hpp"
#include "cms/harish_chandra.hpp"
#include "cms/hull.hpp"
#include "cms/json_io.hpp"
#include "cms/laurent.hpp"
#include "cms/localized.hpp"
#include "cms/matrix.hpp"
#include "cms/operators.hpp"
#include "cms/quasi_invariants.hpp"
#include "cms/rational.hpp"
#include "cms/spectral.hpp"
#include "cms/weights.hpp"
