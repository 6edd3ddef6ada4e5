#pragma once

#include "gtutte/abelian.hpp"
#include "gtutte/group.hpp"
#include "gtutte/int.hpp"
#include "gtutte/io.hpp"
#include "gtutte/matrix.hpp"
#include "gtutte/oracle.hpp"
#include "gtutte/polynomial.hpp"
#include "gtutte/quasipoly.hpp"
#include "gtutte/snf.hpp"
#include "gtutte/transforms.hpp"
#include "gtutte/tutte.hpp"
