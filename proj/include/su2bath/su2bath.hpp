// su2bath.hpp — umbrella header

#pragma once

#include "su2bath/bath.hpp"
#include "su2bath/commands.hpp"
#include "su2bath/config.hpp"
#include "su2bath/equilibrium.hpp"
#include "su2bath/evolution.hpp"
#include "su2bath/fock.hpp"
#include "su2bath/generator.hpp"
#include "su2bath/hermite.hpp"
#include "su2bath/hilbert.hpp"
#include "su2bath/io.hpp"
#include "su2bath/render.hpp"
#include "su2bath/state.hpp"
#include "su2bath/states.hpp"
#include "su2bath/validate.hpp"
