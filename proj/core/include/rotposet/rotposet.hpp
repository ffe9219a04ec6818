#pragma once

#include "rotposet/class_explorer.hpp"
#include "rotposet/element_set.hpp"
#include "rotposet/equivalence.hpp"
#include "rotposet/errors.hpp"
#include "rotposet/graph.hpp"
#include "rotposet/poset.hpp"
#include "rotposet/random_ext.hpp"
#include "rotposet/reductions.hpp"
#include "rotposet/rotation.hpp"
#include "rotposet/text_format.hpp"
