#pragma once

#include "latval/bitset.hpp"
#include "latval/birkhoff.hpp"
#include "latval/dot.hpp"
#include "latval/error.hpp"
#include "latval/io.hpp"
#include "latval/oracle.hpp"
#include "latval/poset.hpp"
#include "latval/realizer.hpp"
#include "latval/valuation.hpp"
