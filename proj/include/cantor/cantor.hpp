// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "cantor/blocks.hpp"
#include "cantor/construction.hpp"
#include "cantor/diagnose.hpp"
#include "cantor/digit_sequence.hpp"
#include "cantor/equidistribution.hpp"
#include "cantor/errors.hpp"
#include "cantor/numeric.hpp"
#include "cantor/partition.hpp"
#include "cantor/rational.hpp"
#include "cantor/schedule.hpp"
#include "cantor/sequence.hpp"
#include "cantor/sequence_io.hpp"
#include "cantor/stats.hpp"
#include "cantor/transforms.hpp"
#include "cantor/ud.hpp"
