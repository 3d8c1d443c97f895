#pragma once

#include "pathbij/bigint.hpp"
#include "pathbij/bijections.hpp"
#include "pathbij/compositions.hpp"
#include "pathbij/enumerate.hpp"
#include "pathbij/error.hpp"
#include "pathbij/hardinian.hpp"
#include "pathbij/io.hpp"
#include "pathbij/oeis.hpp"
#include "pathbij/paths.hpp"
#include "pathbij/profiles.hpp"
#include "pathbij/registry.hpp"
#include "pathbij/series.hpp"
#include "pathbij/verify.hpp"
