// Umbrella header.
#pragma once

#include "alexlin/alexmod.hpp"
#include "alexlin/covers.hpp"
#include "alexlin/groups.hpp"
#include "alexlin/json_io.hpp"
#include "alexlin/laurent.hpp"
#include "alexlin/polymatrix.hpp"
#include "alexlin/reps.hpp"
#include "alexlin/roots.hpp"
#include "alexlin/transforms.hpp"
#include "alexlin/words.hpp"
