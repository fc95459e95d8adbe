#pragma once

#include "gerbeforge/groups/abelian_group.hpp"
#include "gerbeforge/groups/int_matrix.hpp"
#include "gerbeforge/groups/lattice.hpp"
#include "gerbeforge/groups/smith.hpp"
#include "gerbeforge/groups/tensor.hpp"
