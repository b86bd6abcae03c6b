#pragma once

#include "flopk/bott.hpp"
#include "flopk/chow.hpp"
#include "flopk/counterex.hpp"
#include "flopk/errors.hpp"
#include "flopk/flopgeom.hpp"
#include "flopk/kgroup.hpp"
#include "flopk/matrix.hpp"
#include "flopk/numeric.hpp"
#include "flopk/partitions.hpp"
#include "flopk/weyl.hpp"
