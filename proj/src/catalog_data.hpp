#ifndef TRISYS_CATALOG_DATA_HPP
#define TRISYS_CATALOG_DATA_HPP

namespace trisys::detail {

extern const char* const kDialgebraIds;
extern const char* const kAts1Ids;
extern const char* const kAts2Ids;
extern const char* const kAtt1Ids;
extern const char* const kAtt2Ids;
extern const char* const kJtdIds;
extern const char* const kLeibtsIds;
extern const char* const kLeftSymmetricIds;
extern const char* const kRightLeibnizIds;
extern const char* const kAssocInputIds;
extern const char* const kLeftSymmetricInputIds;

}  // namespace trisys::detail

#endif
