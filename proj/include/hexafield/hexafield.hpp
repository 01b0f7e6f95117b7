#pragma once

// Umbrella header.

#include "hexafield/arith.hpp"
#include "hexafield/bitset.hpp"
#include "hexafield/config.hpp"
#include "hexafield/errors.hpp"
#include "hexafield/galois.hpp"
#include "hexafield/group.hpp"
#include "hexafield/hexagons.hpp"
#include "hexafield/lottery.hpp"
#include "hexafield/morphisms.hpp"
#include "hexafield/pasture.hpp"
#include "hexafield/products.hpp"
#include "hexafield/skew.hpp"
