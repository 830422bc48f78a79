#pragma once

#include "wprange/analytics.hpp"
#include "wprange/ddwpr.hpp"
#include "wprange/error.hpp"
#include "wprange/moments.hpp"
#include "wprange/oracle.hpp"
#include "wprange/philox.hpp"
#include "wprange/series_kernel.hpp"
#include "wprange/tddwpr.hpp"
