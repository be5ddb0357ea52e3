#pragma once

#include "fuzzyseg/core.hpp"
#include "fuzzyseg/eval.hpp"
#include "fuzzyseg/fcm.hpp"
#include "fuzzyseg/hist_fcm.hpp"
#include "fuzzyseg/io.hpp"
#include "fuzzyseg/isfcm.hpp"
