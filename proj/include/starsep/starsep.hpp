#pragma once

#include "starsep/vertex_set.hpp"
#include "starsep/errors.hpp"
#include "starsep/graph.hpp"
#include "starsep/weights.hpp"
#include "starsep/io.hpp"
#include "starsep/detectors.hpp"
#include "starsep/cutsets.hpp"
#include "starsep/separations.hpp"
#include "starsep/central_bag.hpp"
#include "starsep/hub_division.hpp"
#include "starsep/treewidth.hpp"
#include "starsep/separator_engine.hpp"
#include "starsep/certify.hpp"
#include "starsep/generators.hpp"
#include "starsep/serialize.hpp"
#include "starsep/cli.hpp"
