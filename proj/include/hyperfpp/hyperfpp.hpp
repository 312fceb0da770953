#pragma once

#include "hyperfpp/core.hpp"
#include "hyperfpp/enumerate.hpp"
#include "hyperfpp/errors.hpp"
#include "hyperfpp/fnk.hpp"
#include "hyperfpp/gamma.hpp"
#include "hyperfpp/good_edges.hpp"
#include "hyperfpp/independent.hpp"
#include "hyperfpp/moments.hpp"
#include "hyperfpp/parallel.hpp"
#include "hyperfpp/solver.hpp"
#include "hyperfpp/stats.hpp"
#include "hyperfpp/version.hpp"
#include "hyperfpp/weights.hpp"
