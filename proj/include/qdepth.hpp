#pragma once

#include "qdepth/beta.hpp"
#include "qdepth/bigint.hpp"
#include "qdepth/closed_forms.hpp"
#include "qdepth/engine.hpp"
#include "qdepth/errors.hpp"
#include "qdepth/poset.hpp"
#include "qdepth/realize.hpp"
#include "qdepth/sdepth.hpp"
#include "qdepth/sequence.hpp"
