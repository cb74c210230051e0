// Everything at once.

#pragma once

#include "higman/congruence.hpp"
#include "higman/dfa.hpp"
#include "higman/element.hpp"
#include "higman/error.hpp"
#include "higman/formula.hpp"
#include "higman/green.hpp"
#include "higman/kary.hpp"
#include "higman/measure.hpp"
#include "higman/plep.hpp"
#include "higman/version.hpp"
#include "higman/words.hpp"
