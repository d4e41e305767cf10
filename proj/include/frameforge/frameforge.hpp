#pragma once

#include "frameforge/dyadic.hpp"
#include "frameforge/amp.hpp"
#include "frameforge/stepfn.hpp"
#include "frameforge/scaling.hpp"
#include "frameforge/unimodular.hpp"
#include "frameforge/filterbank.hpp"
#include "frameforge/wavelet.hpp"
#include "frameforge/naimark.hpp"
#include "frameforge/catalog.hpp"
#include "frameforge/json_io.hpp"
