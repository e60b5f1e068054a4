#pragma once

#include "pbias/boolean_function.hpp"
#include "pbias/core.hpp"
#include "pbias/error.hpp"
#include "pbias/families.hpp"
#include "pbias/fourier.hpp"
#include "pbias/hyper.hpp"
#include "pbias/io.hpp"
#include "pbias/kkl.hpp"
#include "pbias/measure.hpp"
#include "pbias/oracle.hpp"
#include "pbias/threshold.hpp"
