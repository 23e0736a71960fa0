#pragma once

#include "gatekeeper/data_io.hpp"
#include "gatekeeper/error.hpp"
#include "gatekeeper/evaluator.hpp"
#include "gatekeeper/report_json.hpp"
#include "gatekeeper/schedule_model.hpp"
#include "gatekeeper/solvers.hpp"
#include "gatekeeper/sweep.hpp"
