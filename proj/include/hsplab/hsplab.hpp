#pragma once

#include "hsplab/numeric.hpp"
#include "hsplab/permutation.hpp"
#include "hsplab/partition.hpp"
#include "hsplab/cyclotomic.hpp"
#include "hsplab/matrix.hpp"
#include "hsplab/group.hpp"
#include "hsplab/symmetric.hpp"
#include "hsplab/young.hpp"
#include "hsplab/rep_ops.hpp"
#include "hsplab/dihedral.hpp"
#include "hsplab/sampling.hpp"
#include "hsplab/graph.hpp"
#include "hsplab/product_reps.hpp"
#include "hsplab/json_io.hpp"
#include "hsplab/verify.hpp"
