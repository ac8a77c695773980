#pragma once

#include "rdq/errors.hpp"
#include "rdq/int_matrix.hpp"
#include "rdq/weight_algebra.hpp"
#include "rdq/symmetry.hpp"
#include "rdq/crossed.hpp"
#include "rdq/theta_sphere.hpp"
#include "rdq/projections.hpp"
#include "rdq/simplicial.hpp"
#include "rdq/homology.hpp"
#include "rdq/equiv_k.hpp"
#include "rdq/models.hpp"
#include "rdq/instance.hpp"
