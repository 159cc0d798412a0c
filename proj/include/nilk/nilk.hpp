#pragma once

#include "nilk/errors.hpp"
#include "nilk/scalars.hpp"
#include "nilk/poly.hpp"
#include "nilk/parse.hpp"
#include "nilk/ring_maps.hpp"
#include "nilk/rings.hpp"
#include "nilk/matrix.hpp"
#include "nilk/steinberg.hpp"
#include "nilk/serialize.hpp"
#include "nilk/nil_sse.hpp"
#include "nilk/laurent.hpp"
#include "nilk/groupring.hpp"
#include "nilk/random.hpp"
#include "nilk/selfcheck.hpp"
#include "nilk/report.hpp"
#include "nilk/verify.hpp"
