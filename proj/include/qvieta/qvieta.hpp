#pragma once

// Umbrella header for the qvieta library.

#include "qvieta/block_matrix.hpp"
#include "qvieta/campaign.hpp"
#include "qvieta/combinatorics.hpp"
#include "qvieta/freealg.hpp"
#include "qvieta/json_io.hpp"
#include "qvieta/linear.hpp"
#include "qvieta/matrix.hpp"
#include "qvieta/quasidet.hpp"
#include "qvieta/rational.hpp"
#include "qvieta/rng.hpp"
#include "qvieta/symm.hpp"
#include "qvieta/vieta.hpp"
