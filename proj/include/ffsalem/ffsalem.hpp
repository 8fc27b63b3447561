#pragma once

#include "ffsalem/constructions.hpp"
#include "ffsalem/deviation.hpp"
#include "ffsalem/errors.hpp"
#include "ffsalem/harness.hpp"
#include "ffsalem/pointset.hpp"
#include "ffsalem/rng.hpp"
#include "ffsalem/sampling.hpp"
#include "ffsalem/space.hpp"
#include "ffsalem/spectral.hpp"
