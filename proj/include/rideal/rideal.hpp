#pragma once

#include "rideal/algorithms.hpp"
#include "rideal/atoms.hpp"
#include "rideal/automata.hpp"
#include "rideal/error.hpp"
#include "rideal/io.hpp"
#include "rideal/operations.hpp"
#include "rideal/sampling.hpp"
#include "rideal/semigroup.hpp"
#include "rideal/state_set.hpp"
#include "rideal/transformation.hpp"
#include "rideal/verify.hpp"
#include "rideal/witnesses.hpp"
