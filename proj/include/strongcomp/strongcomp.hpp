#pragma once

#include <strongcomp/bidirectional.hpp>
#include <strongcomp/cycle.hpp>
#include <strongcomp/dfs.hpp>
#include <strongcomp/error.hpp>
#include <strongcomp/extensions.hpp>
#include <strongcomp/graph.hpp>
#include <strongcomp/graph_io.hpp>
#include <strongcomp/instrumentation.hpp>
#include <strongcomp/memory_model.hpp>
#include <strongcomp/quick_search.hpp>
#include <strongcomp/scc_result.hpp>
#include <strongcomp/tarjan.hpp>
#include <strongcomp/trace.hpp>
