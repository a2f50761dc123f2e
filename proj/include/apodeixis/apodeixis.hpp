#pragma once

// Umbrella header.

#include "apodeixis/catalog.hpp"
#include "apodeixis/dsl.hpp"
#include "apodeixis/error.hpp"
#include "apodeixis/model.hpp"
#include "apodeixis/model_json.hpp"
#include "apodeixis/mood.hpp"
#include "apodeixis/properties.hpp"
#include "apodeixis/report_json.hpp"
#include "apodeixis/search.hpp"
#include "apodeixis/semantics.hpp"
