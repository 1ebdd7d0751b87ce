#pragma once

#include "cliquevc/bitset.hpp"
#include "cliquevc/bounds.hpp"
#include "cliquevc/clique.hpp"
#include "cliquevc/edge_list.hpp"
#include "cliquevc/error.hpp"
#include "cliquevc/experiment.hpp"
#include "cliquevc/generators.hpp"
#include "cliquevc/graph.hpp"
#include "cliquevc/pattern.hpp"
#include "cliquevc/random.hpp"
#include "cliquevc/rational.hpp"
#include "cliquevc/set_system.hpp"
#include "cliquevc/verify.hpp"
