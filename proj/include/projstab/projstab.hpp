#pragma once

#include <projstab/fields.hpp>
#include <projstab/projline.hpp>
#include <projstab/moebius.hpp>
#include <projstab/crossratio.hpp>
#include <projstab/stabgroup.hpp>
#include <projstab/classify.hpp>
#include <projstab/scan.hpp>
#include <projstab/json_io.hpp>
