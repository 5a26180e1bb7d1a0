#pragma once

#include "xxcorr/discord.hpp"
#include "xxcorr/entanglement.hpp"
#include "xxcorr/matrix.hpp"
#include "xxcorr/monogamy.hpp"
#include "xxcorr/sweep.hpp"
#include "xxcorr/verify.hpp"
#include "xxcorr/xxchain.hpp"
