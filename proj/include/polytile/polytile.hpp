#pragma once

#include "polytile/geometry.hpp"
#include "polytile/blocks.hpp"
#include "polytile/wang.hpp"
#include "polytile/compiler.hpp"
#include "polytile/solver.hpp"
#include "polytile/simulate.hpp"
#include "polytile/io.hpp"
#include "polytile/render.hpp"
