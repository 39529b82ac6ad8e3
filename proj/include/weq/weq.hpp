#pragma once

#include "weq/types.hpp"
#include "weq/lambda.hpp"
#include "weq/linalg.hpp"
#include "weq/words.hpp"
#include "weq/poly.hpp"
#include "weq/text.hpp"
#include "weq/encode.hpp"
#include "weq/principal.hpp"
#include "weq/analysis.hpp"
#include "weq/random.hpp"
#include "weq/search.hpp"
