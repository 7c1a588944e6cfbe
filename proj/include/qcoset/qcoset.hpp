#pragma once

/// Convenience umbrella for the whole library.

#include "qcoset/version.hpp"
#include "qcoset/integer.hpp"
#include "qcoset/params.hpp"
#include "qcoset/cosets.hpp"
#include "qcoset/sign_sequence.hpp"
#include "qcoset/closed_forms.hpp"
#include "qcoset/bch.hpp"
#include "qcoset/claims.hpp"
#include "qcoset/report.hpp"
