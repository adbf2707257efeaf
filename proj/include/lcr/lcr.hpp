#pragma once

#include "lcr/constructions.hpp"
#include "lcr/format.hpp"
#include "lcr/hlring.hpp"
#include "lcr/ideals.hpp"
#include "lcr/integrality.hpp"
#include "lcr/kernel.hpp"
#include "lcr/lcrng.hpp"
#include "lcr/lyingover.hpp"
