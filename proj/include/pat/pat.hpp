// Umbrella header.
#pragma once

#include "pat/agent.hpp"
#include "pat/bounds.hpp"
#include "pat/config.hpp"
#include "pat/harness.hpp"
#include "pat/math.hpp"
#include "pat/maximin.hpp"
#include "pat/mixture.hpp"
#include "pat/model.hpp"
#include "pat/rng.hpp"
