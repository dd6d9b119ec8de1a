#pragma once

#include "fcreg/automata.hpp"
#include "fcreg/dfa_io.hpp"
#include "fcreg/error.hpp"
#include "fcreg/fc.hpp"
#include "fcreg/loop_step.hpp"
#include "fcreg/monoid.hpp"
#include "fcreg/report.hpp"
#include "fcreg/sfr.hpp"
#include "fcreg/testkit.hpp"
#include "fcreg/words.hpp"
