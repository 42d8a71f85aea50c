#pragma once

#include "epg/analysis.hpp"
#include "epg/bounds.hpp"
#include "epg/constructions.hpp"
#include "epg/core.hpp"
#include "epg/error.hpp"
#include "epg/io.hpp"
#include "epg/render.hpp"
#include "epg/search.hpp"
#include "epg/transform.hpp"
