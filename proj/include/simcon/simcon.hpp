#pragma once

#include "simcon/alphabet.hpp"
#include "simcon/binary.hpp"
#include "simcon/counting.hpp"
#include "simcon/factorization.hpp"
#include "simcon/oracle.hpp"
#include "simcon/spectrum.hpp"
#include "simcon/ternary.hpp"
#include "simcon/word.hpp"
