#ifndef DYNMATCH_DYNMATCH_HPP_
#define DYNMATCH_DYNMATCH_HPP_

#include "dynmatch/blossom.hpp"
#include "dynmatch/core_subgraph.hpp"
#include "dynmatch/cover_maintainer.hpp"
#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/harness.hpp"
#include "dynmatch/lazy_mcm.hpp"
#include "dynmatch/level_combiner.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/mwm_schemes.hpp"
#include "dynmatch/oracles.hpp"
#include "dynmatch/static_match.hpp"
#include "dynmatch/step_task.hpp"
#include "dynmatch/stream_io.hpp"
#include "dynmatch/types.hpp"
#include "dynmatch/weighted_lazy.hpp"
#include "dynmatch/workload.hpp"
#include "dynmatch/worstcase_engine.hpp"

#endif  // DYNMATCH_DYNMATCH_HPP_
