#pragma once

#include <smalldev/bounds.hpp>
#include <smalldev/core_model.hpp>
#include <smalldev/exact_prob.hpp>
#include <smalldev/explorer.hpp>
#include <smalldev/extremal.hpp>
#include <smalldev/json_io.hpp>
#include <smalldev/nelder_mead.hpp>
#include <smalldev/numeric.hpp>
#include <smalldev/phi.hpp>
#include <smalldev/rng.hpp>
