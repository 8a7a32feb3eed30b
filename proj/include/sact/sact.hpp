#pragma once

// Umbrella header for the whole library.

#include "sact/act.hpp"
#include "sact/act_class.hpp"
#include "sact/bounds.hpp"
#include "sact/congruence.hpp"
#include "sact/error.hpp"
#include "sact/fixture.hpp"
#include "sact/monoid.hpp"
#include "sact/radical.hpp"
#include "sact/report.hpp"
#include "sact/torsion.hpp"
#include "sact/universe.hpp"
