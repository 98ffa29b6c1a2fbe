#pragma once

#include "netgram/bounds.hpp"
#include "netgram/cli.hpp"
#include "netgram/errors.hpp"
#include "netgram/format.hpp"
#include "netgram/gramian.hpp"
#include "netgram/graphs.hpp"
#include "netgram/leader_pattern.hpp"
#include "netgram/leader_sweep.hpp"
#include "netgram/lyapunov.hpp"
#include "netgram/matrix.hpp"
#include "netgram/spectral.hpp"
