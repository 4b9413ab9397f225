#pragma once

#include <pendant/bounds.hpp>
#include <pendant/bounds_audit.hpp>
#include <pendant/digraph.hpp>
#include <pendant/gadgets.hpp>
#include <pendant/generators.hpp>
#include <pendant/io.hpp>
#include <pendant/oracles.hpp>
#include <pendant/solvers.hpp>
#include <pendant/steiner.hpp>
