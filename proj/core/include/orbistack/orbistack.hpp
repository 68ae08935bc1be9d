#pragma once

#include "orbistack/arith.hpp"
#include "orbistack/embed.hpp"
#include "orbistack/errors.hpp"
#include "orbistack/git.hpp"
#include "orbistack/lattice.hpp"
#include "orbistack/linalg.hpp"
#include "orbistack/wps.hpp"
