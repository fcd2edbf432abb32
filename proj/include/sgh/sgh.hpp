#pragma once

// Umbrella header.

#include "sgh/certificates.hpp"
#include "sgh/classify.hpp"
#include "sgh/io.hpp"
#include "sgh/oracle.hpp"
#include "sgh/ordering.hpp"
#include "sgh/pair_digraph.hpp"
#include "sgh/signed_graph.hpp"
#include "sgh/solver.hpp"
#include "sgh/special.hpp"
