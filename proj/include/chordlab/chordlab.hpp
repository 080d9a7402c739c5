#pragma once

// Umbrella header.

#include "chordlab/diagram.hpp"
#include "chordlab/enumeration.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/gauss_word.hpp"
#include "chordlab/intlinalg.hpp"
#include "chordlab/invariants.hpp"
#include "chordlab/module_element.hpp"
#include "chordlab/moves.hpp"
#include "chordlab/relators.hpp"
#include "chordlab/subwords.hpp"
