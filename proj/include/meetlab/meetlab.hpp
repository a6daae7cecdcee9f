#pragma once
// Umbrella include.

#include "meetlab/errors.hpp"
#include "meetlab/graph.hpp"
#include "meetlab/hidden.hpp"
#include "meetlab/hitting.hpp"
#include "meetlab/linalg.hpp"
#include "meetlab/meeting.hpp"
#include "meetlab/parallel.hpp"
#include "meetlab/rng.hpp"
#include "meetlab/scheduler.hpp"
#include "meetlab/simulate.hpp"
#include "meetlab/state_space.hpp"
#include "meetlab/verify.hpp"
