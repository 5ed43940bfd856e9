#pragma once

// Everything except the JSON encoders, which need nlohmann/json.

#include "cpo/adjunction.hpp"
#include "cpo/error.hpp"
#include "cpo/funcspace.hpp"
#include "cpo/named.hpp"
#include "cpo/order.hpp"
#include "cpo/render.hpp"
#include "cpo/replication.hpp"
#include "cpo/stages.hpp"
#include "cpo/strings.hpp"
