#pragma once

#include "hyperoct/gegenbauer.hpp"
#include "hyperoct/harmonic.hpp"
#include "hyperoct/io.hpp"
#include "hyperoct/linalg.hpp"
#include "hyperoct/moments.hpp"
#include "hyperoct/orbit.hpp"
#include "hyperoct/polynomial.hpp"
#include "hyperoct/rational.hpp"
#include "hyperoct/solver.hpp"
#include "hyperoct/strength.hpp"
#include "hyperoct/tight.hpp"
