#ifndef HCP_HCP_HPP
#define HCP_HCP_HPP

#include "hcp/bitset.hpp"
#include "hcp/code.hpp"
#include "hcp/coloring.hpp"
#include "hcp/construction.hpp"
#include "hcp/error.hpp"
#include "hcp/gf2.hpp"
#include "hcp/graph.hpp"
#include "hcp/matrix.hpp"
#include "hcp/parallel.hpp"
#include "hcp/spectrum.hpp"
#include "hcp/verify.hpp"
#include "hcp/word.hpp"

#endif
