#pragma once

/// Umbrella header: steady-state biomass gasification with first- and
/// second-law accounting.
///
/// Layering, bottom to top:
///   environment  -- physical constants and the reference environment
///   species      -- polynomial thermochemistry of one species
///   species_db   -- the bundled dataset, parsing and reference exergies
///   fuel         -- solid-fuel analyses, heating values, chemical exergy
///   stream       -- flowing gas / water / fuel streams and their rates
///   gasifier     -- equilibrium product composition and the energy balance
///   exergy       -- stream exergies, the destruction balance, recovery
///   analysis     -- one operating point evaluated end to end
///   sweep        -- parametric studies and CSV emission

#include "exergas/analysis.hpp"
#include "exergas/environment.hpp"
#include "exergas/errors.hpp"
#include "exergas/exergy.hpp"
#include "exergas/fuel.hpp"
#include "exergas/gasifier.hpp"
#include "exergas/species.hpp"
#include "exergas/species_data.hpp"
#include "exergas/species_db.hpp"
#include "exergas/stream.hpp"
#include "exergas/sweep.hpp"
