#pragma once

#include "isochain/biortho.hpp"
#include "isochain/chain.hpp"
#include "isochain/eig.hpp"
#include "isochain/errors.hpp"
#include "isochain/io.hpp"
#include "isochain/linalg.hpp"
#include "isochain/metric.hpp"
#include "isochain/models.hpp"
#include "isochain/rng.hpp"
#include "isochain/types.hpp"
#include "isochain/verify.hpp"
