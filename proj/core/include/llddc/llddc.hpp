#pragma once

#include "llddc/analysis.hpp"
#include "llddc/errors.hpp"
#include "llddc/filters.hpp"
#include "llddc/pipeline.hpp"
#include "llddc/signal.hpp"
#include "llddc/simulator.hpp"
