#pragma once

#include "twistcoh/certificate.hpp"
#include "twistcoh/character.hpp"
#include "twistcoh/cocycle.hpp"
#include "twistcoh/enumerator.hpp"
#include "twistcoh/errors.hpp"
#include "twistcoh/families.hpp"
#include "twistcoh/int_matrix.hpp"
#include "twistcoh/linear.hpp"
#include "twistcoh/scalar.hpp"
#include "twistcoh/word.hpp"
