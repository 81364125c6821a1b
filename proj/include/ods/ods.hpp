#pragma once

#include "ods/adversary_det.hpp"
#include "ods/adversary_rand.hpp"
#include "ods/analysis.hpp"
#include "ods/blocks.hpp"
#include "ods/dominating.hpp"
#include "ods/experiment.hpp"
#include "ods/generate.hpp"
#include "ods/json_io.hpp"
#include "ods/normalize.hpp"
#include "ods/offline.hpp"
#include "ods/online.hpp"
#include "ods/rational.hpp"
#include "ods/tree.hpp"
