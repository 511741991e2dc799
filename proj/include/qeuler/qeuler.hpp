#pragma once

#include "qeuler/bigint.hpp"
#include "qeuler/eulerian.hpp"
#include "qeuler/homology.hpp"
#include "qeuler/letters.hpp"
#include "qeuler/perm.hpp"
#include "qeuler/poly.hpp"
#include "qeuler/poset.hpp"
#include "qeuler/qanalog.hpp"
#include "qeuler/quasisym.hpp"
#include "qeuler/report.hpp"
#include "qeuler/series.hpp"
#include "qeuler/words.hpp"
