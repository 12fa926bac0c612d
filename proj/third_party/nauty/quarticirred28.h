static char *irred[] = {
"D~{\n",
"I~{?GKF@w\n",
"I^}A?KF@w\n",
"G~`HW{\n",
"N~{?GKF@w??@?B?B_@w\n",
"N^{?GKF@{?G??B?B_@w\n",
"L~?GW[N_A?cBCF\n",
"M^{??KF@{?G@@B?b_\n",
"N^}??KF@y??O?B?B_@w\n",
"K~`GW[_CGD_N\n",
"L~`HW[O?O@_F?N\n",
"S~{?GKF@w??@?B?B_@w????C??W??w??{\n",
"S^{?GKF@w??@?B?B_@{??O????W??w??{\n",
"Q~?GW[N???_B?F?Fo?A?@G?KO?w\n",
"R^{??KF@w??@?B?B_@{??O?CC?WC?w\n",
"S^{??KF@{?G??B?B_@wG??_???W??w??{\n",
"Q~??W[N_A?cBCFA??_??B??[?@w\n",
"O~?GW]?OH@aFA?@?_OWAF\n",
"Q~??W[N_A??B?F?Fc??_@A?KC?w\n",
"S^{?GKF@{????B?B_@y???@???W??w??{\n",
"P~?GW[N_A?_B?FG?A?G?J??{\n",
"Q~?GW[N_A?cB?FC???O?B??[?@w\n",
"R^{??KF@{????B?B_@y??@?CA?W?Gw\n",
"P~??W[N_A?cB?FC?@?GGB??{\n",
"S^{??KF@{??_?B?B_@y???_???W??w??{\n",
"O~?GW]?OGP_fG?C?_OWAF\n",
"Q~??W[N_A?cBAFC??_??B??[?@w\n",
"O~?GW]?OH@`FC?@?_OWAF\n",
"Q^{??KF@{??`?B?Bg??C@??k?@w\n",
"P~??W[N_A?`B?FG?A?GGB??{\n",
"O~`GW[_?g@_FC??O_@W?N\n",
"X~{?GKF@w??@?B?B_@w????C??W??w??{??????G??@_??F???N\n",
"X^{?GKF@w??@?B?B_@w????C??W??w??}???O?????@_??F???N\n",
"V~?GW[N???_B?F?F_???@??K??w?@{??@??@G??W_?B_\n",
"W^{??KF@w??@?B?B_@w????C??W??w??}???O??GG?@_O?F\n",
"X^{??KF@w??@?B?B_@{??O????W??w??{C???_????@_??F???N\n",
"V~??W[N???_B?F?Fo?A?@G?KO?wO??G????B???w??F_\n",
"T~?GW[??G@_F?N_?G?H?BC?[G??G?GC?K@?F\n",
"V~??W[N???_B?F?Fo?A????K??w?@x???O?@A??WG?B_\n",
"W^{??KF@w????B?B_@{??O????W??w??{C???_?G?O@_?_F\n",
"U~??W[N????B?F?Fo?A?@G?KO?wO??G?C?OB?A?w\n",
"X^{?GKF@w??@?B?B_@{???????W??w??|?????A???@_??F???N\n",
"U~?GW[N???_B?F?Fo?A?@??K??x???_?C??J??@w\n",
"V~?GW[N???_B?F?Fo?A?@G?K??w_????G??B???w??F_\n",
"W^{??KF@w??@?B?B_@{???????W??w??|???@??GC?@_?@F\n",
"U~??W[N???_B?F?Fo?A?@G?K??w_??O?CC?B??@w\n",
"X^{??KF@w??@?B?B_@{??@????W??w??|????_????@_??F???N\n",
"T~?GW[??G@_F?N_?G?GOB@?[_??_?GC?K@?F\n",
"V~??W[N???_B?F?Fo?A?@G?KG?w_??G????B???w??F_\n",
"T~?GW[??G@_F?N_?G?H?BA?[O??G?GC?K@?F\n",
"W^{??KF@w????B?B_@{??@????W??w??|????_?G?O@_?_F\n",
"U~??W[N????B?F?Fo?A?@G?KG?w_??G?C?OB?A?w\n",
"V^{??KF@w??@?B?B_@{??@?C??W??y???A?@??@W??F_\n",
"U~??W[N???_B?F?Fo?A?@A?K??x???_?CC?B??@w\n",
"V^{??KF@w????B?B_@{??@?CA?W??y????G@?@?W??F_\n",
"U~??W[N????B?F?Fo?A?@A?K?Ox???_?CC?B?A?w\n",
"V^{??KF@w????B?B_@{??@?C?GW??y???A?@?@?W??F_\n",
"U~?GW]?O?@_F?NA??_??B??[?@x???_?CA?B?O?w\n",
"X^{??KF@{????B?B_@wG??_???W??w??|????@????@_??F???N\n",
"V^{?GKF_???B?F?F__?C@?OK?_y????O???B???w??F_\n",
"U~??W[N_A?_B?FA??_??B??[?@x???_?C?CB??_w\n",
"S~?GW]?OG@_FA?@?_OWAFG??O?G?OW?G[\n",
"V~??W[N_A?cB?FA??_??B??[?@w_???C???B???w??F_\n",
"T~?GW]?OH@_FA?@?_OWAFC???C???W??[??N\n",
"V^{?GKF_???B?F?F__?C???K??w?@y???@?@?G?W?OB_\n",
"T~?GW]?OH@_FA?@???W?F??{O??C?GA?K?CF\n",
"W^{??KF@{????B?B_@wG??????W??w??|????_?G?G@_?@F\n",
"U~??W[N_A?cB?FA?????B??[?@w_??G?C?AB??Gw\n",
"S~?GW]?OH@_FA?@?_OW?FC??@?G?GW??{\n",
"X^{??KF@{????B?B_@y??@????W??w??{A???@????@_??F???N\n",
"S~?GW]?OG@_FG?C?`?WGF?_?@?G?OW?G[\n",
"V~??W[N_A?cB?FC?@???B??[?@wG???C???B???w??F_\n",
"T~?GW]?OH@_FC?A?__WCF?O??C???W??[??N\n",
"V~??W[N_???B?F?Fg??O???K??w?@x???O?@@??W?OB_\n",
"T~?GW]???@_F?NO?@?GGB?_[_??_?GA?K?OF\n",
"T~?GW]???@_F?NO?C?GOB@?[O??C?GA?K?OF\n",
"U~??W[N_A?_B?FG?@???B??[?@w_??G?C?CB??_w\n",
"S~?GW]?OG@_FG?A?__WCFC??@?G?OW?G[\n",
"U~??W[N_???B?F?Fg?@?@A?K??w_??G?C?GB??@w\n",
"T~??W[N_??_B?FO?C?G?R?@[O??O?GG?K?AF\n",
"U~??W[N_A?_B?FG???_?B??[?@w_??O?CC?B??_w\n",
"T~?GW[N_A?_B?FG???g?B??[O???CG??k??N\n",
"T~??W[N_A?_B?FG?@?G?J??[O??G?G?CK??N\n",
"S~?GW]?AG@_FO?G?__WCFC??@?G?OW?G[\n",
"T~?GW]?OGP_FG?@???W?F??{O??C?GA?K?CF\n",
"S~?GW]?OGP_FG?@?_OW?FC??@?G?GW??{\n",
"S~_GW\\?@G@_FG??__@W?FC??@?G?GW??{\n",
"[~?GW[N???_B?F?F_???@??K??w?@w?????@???W??B_??N_???O???c???W_??F\n",
"[~??W[N???_B?F?F_???@??K??w?@{??@??@G??W_?B`???@??????@_???w???N\n",
"Y~?GW[??G@_F?N????G?B??[?@{??A??C_?BC??wO???_?@?_?B?O?B_\n",
"[~??W[N???_B?F?F_???@??K??w?@{??@??????W??B_??NG???C???`???WG??F\n",
"Z~??W[N????B?F?F_???@??K??w?@{??@??@G??W_?B`???@??@?C?@_@??w\n",
"Z~?GW[N???_B?F?F_???@??K??w?@{??@??@???W??Bc???C??@???D_??@w\n",
"[~?GW[N???_B?F?F_???@??K??w?@{??@??@G??W??Ba??????A???@_???w???N\n",
"Z~??W[N???_B?F?F_???@??K??w?@{??@??@G??W??Ba???A??@@??@_??@w\n",
"Y~?GW[??G@_F?N????G?B??[?@{??A??CG?B@??x???A??@?_?B?O?B_\n",
"[~??W[N???_B?F?F_???@??K??w?@{??@??@G??WO?Ba???@??????@_???w???N\n",
"Y~?GW[??G@_F?N????G?B??[?@{??A??C_?BA??w_???_?@?_?B?O?B_\n",
"[^{??KF@w????B?B_@w???????W??w??}???O??GG?@_O?F?A???@??_?A?W??OF\n",
"Z~??W[N????B?F?F_???@??K??w?@{??@??@G??WO?Ba???@??@?C?@_@??w\n",
"[^{??KF@w??@?B?B_@w????C??W??w??}???@??G??@_??FO????_??_??@W???N\n",
"Z~??W[N???_B?F?F_???@??K??w?@{??@??@A??W??Bc???C??@@??@_??@w\n",
"[^{??KF@w????B?B_@w????C??W??w??}???@??GC?@_??FO????A??_?_?W???N\n",
"Z~??W[N????B?F?F_???@??K??w?@{??@??@A??W?_Bc???C??@@??@_@??w\n",
"[^{??KF@w????B?B_@w???????W??w??}???@??G?O@_?_FO????_??_?A?W??OF\n",
"[^{??KF@w????B?B_@w????C??W??w??}???@??G?O@_??FO????_??_?_?W???N\n",
"[^{??KF@w????B?B_@w???????W??w??}???@??G?O@_?AFO????_??_?_?W??OF\n",
"[~??W[N????B?F?Fo?A?@G?KO?wO??G????B???w??F_A???A?????@_???w???N\n",
"Y~?GW[???@_F?N_?G?H?BC?[G??G?GC?K@?F?G???_????B???F???F_\n",
"W~?GW[??G@_F_?O?c?W_FA??C?GC?WA?[?_??C?G?O@_?_F\n",
"Z~?GW[??G@_F?N_?G???B??[?@wO??G????B???w??Fc???C??@?_?@_G??w\n",
"[~??W[N????B?F?Fo?A????K??w?@wO??C?????W??B_??NG???C???_A??W?O?F\n",
"Y~?GW[???@_F?N_?G???B??[?@wO??G?CA?B?O?x???A??@?G?B?C?B_\n",
"[^{?GKF???_B?F?Fo??????K??w?@wG??A?@?O?W@?Bg?????C????@_???w???N\n",
"Z~??W[N???_B?F?Fo?A?@??K??wO??G????B???w??Fc???C??@??A@_??_w\n",
"X~?GW[??G@_F?N_?G?G?B??[G??G?GC?K@?FG???_??_?AB??AF\n",
"[~??W[N???_B?F?Fo?A?@G?K??wO??G????B???w??Fa?????@????@_???w???N\n",
"Y~?GW[??G@_F?N_?G?H?B??[G??G?GC?K@?FC?????O???B???F???F_\n",
"[^{?GKF???_B?F?Fo??????K??w?@wG??A?????W??B_??NO????O??_C??W??_F\n",
"Y~?GW[??G@_F?N_?G?H?B??[G??G????K??F??@w_???O?@?O?B??AB_\n",
"Z^{?GKF????B?F?Fo??????K??w?@wG??A?@?O?W@?Bg????C?@?A?@_?A?w\n",
"Z~??W[N????B?F?Fo?A?@G?K??wO??G????B???w??Fa????C?@?A?@_??_w\n",
"X~?GW[???@_F?N_?G?H?B??[G??G?GC?K@?FC???@??_A?B??AF\n",
"Z~??W[N???_B?F?Fo?A?@G?K??wO???????B???w??Fa???@??@??@@_??Gw\n",
"X~?GW[??G@_F?N_?G?H?B??[G??G?GC?K??FC???A??_?@B???N\n",
"X~?GW[??G@_F?N_?G?G?B??[_??_?GO?KC?F?_??A??_?AB??AF\n",
"[~??W[N???_B?F?Fo?A?@G?K??w_??O????B???w??F__????@????@_???w???N\n",
"Y~?GW[??G@_F?N_?G?H?B??[O??O?GG?KA?F?O????O???B???F???F_\n",
"[~??W[N????B?F?Fo?A????K??w?@x???G?????W??B_??NC???@???_A??W?O?F\n",
"Y~?GW[???@_F?N_?G???B??[?@x???O?CC?B?_?w_???G?@?G?B?C?B_\n",
"[~??W[N???_B?F?Fo??????K??w?@y???G?????W??B_??NG???C???__??W??_F\n",
"Y~?GW[??G@_F?N_?????B??[?@y???O?CC?B?_?x???A??@?O?B??GB_\n",
"Y~?GW[??G@_F?N_?????B??[?@y??@??CG?B@??w_???O?@?O?B??GB_\n",
"Z~??W[N???_B?F?Fo?A?@??K??x???O????B???w??Fa???@??@??A@_??_w\n",
"X~?GW[??G@_F?N_?G?G?B??[_??O?GG?KA?FC???A??_?AB??AF\n",
"Z~??W[N????B?F?Fo??????K??w?@y???_?@C??WO?B__???C?@?A?@_?A?w\n",
"Z~??W[N????B?F?Fo?A?@G?K??w_??O????B???w??F__???C?@?A?@_??_w\n",
"X~?GW[???@_F?N_?G?H?B??[O??O?GG?KA?F?O??@??_A?B??AF\n",
"Z~??W[N???_B?F?Fo?A????K??w?@x???G?@???W??Ba???@??@???D_??@w\n",
"Y~?GW[??G@_F?N_?G???B??[?@x???O?CC?B???w_???O?@?O?B???F_\n",
"Z~??W[N????B?F?Fo?A????K??w?@x???G?@@??W??Ba????C?@?A?@_??@w\n",
"Z~??W[N???_B?F?Fo??????K??w?@y???_?@A??W??Ba???@??@??C@_??@w\n",
"Y~?GW[???@_F?N_?G???B??[?@wO??G?C?_B?C?x???A??@?_?B?O?B_\n",
"Y^{?GKF???_B?F_?G???B??[?@wG??C?C?OB?A?wA???C?@?@?B??_B_\n",
"[^{?GKF????B?F?Fo?A????K??w?@wG??A?@?O?W?_B_C???A?????@_???w???N\n",
"Y^{?GKF???_B?F_?G???B??[?@wG??C?C@?B?C?w@???@?@?@?B??_B_\n",
"[~??W[N????B?F?Fo?A?@G?KO?wO???_???B???w??F__???A?????@_???w???N\n",
"W~?GW[??G@_F_?O?c?W_FA??C?G@?W?_[A???O?G?O@_?_F\n",
"Y~?GW[???@_F?N_?G?H?BC?[G??G?GC?K?_F?O???_????B???F???F_\n",
"W~?GW[??G@_F_?O?c?W_FA??C?GC?W@?[@???C?G?O@_?_F\n",
"Y~??W[N????B?F?Fo?A?@??K??wO??G?C?OB?A?x???A??@??AB??@B_\n",
"Z~??W[N????B?F?Fo?A?@G?K??wO??G?C?OB?A?w_?????_???B???B_??@w\n",
"[~??W[N????B?F?Fo?A????K??w?@wO???O????W??B_??NG???C???__??W?O?F\n",
"Y~?GW[???@_F?N_?G???B??[?@wO??G?CA?B?G?x???A??@?O?B?C?B_\n",
"Z^{?GKF????B?F?Fo??????K??w?@wG??A?@?C?W?OBg????O?@?G?@_?A?w\n",
"X~?GW[???@_F?N_?G?H?B??[G??G?G@?K?OFC???C??_G?B??AF\n",
"Z~??W[N????B?F?Fo?A????K??w?@wO???O@?A?W??Bc???C??@@??@_??@w\n",
"[^{??KF@w????B?B_@{??O????W??w??{C???A?G??@_??F?_???@??_??@W???N\n",
"Z^{?GKF????B?F?Fo?A????K??w?@wG??A?@?C?W??B_G???G?@?A?@_??@w\n",
"Y~??W[N????B?F?Fo?A?@G?KO?wO???_C??B???wG???@?@???J???F_\n",
"X~?GW[???@_F?N_?G?H?BC?[G??G?G@?K??F?_??A??_A?B???N\n",
"Z^{?GKF????B?F?Fo??????K??w?@wG??A?@?O?W?_Bg????G?@?A?@_?A?w\n",
"Z~??W[N????B?F?Fo?A?@G?K??wO???_???B???w??Fa???@??@?A?@_??_w\n",
"X~?GW[???@_F?N_?G?H?B??[G??G?GC?K?_FC???A??_A?B??AF\n",
"[^{??KF@w????B?B_@{???????W??w??{C???A?G?G@_??FO????_??_?@?W???N\n",
"Y~??W[N????B?F?Fo?A?@G?K??wO???_C?GB???w_???_?@??@B???F_\n",
"Y~?GW[N???_B?F?Fo?A?@??K??x?????S??B???w_?????`???J???F_\n",
"Z^{?GKF????B?F?Fo??????K??w?@y???C?@?_?W?_B_G???G?@?A?@_?A?w\n",
"Y~??W[N????B?F?Fo?A?@??K??x???_?CG?B?C?wG???@?@??AB??@B_\n",
"X~?GW[???@_F?N_?G?H?B??[O??O?GG?K?_F?_??A??_A?B??AF\n",
"Z~??W[N????B?F?Fo??????K??w?@y???_?@A??W?_Ba???@??@?A?@_?A?w\n",
"Z~??W[N????B?F?Fo?A????K??w?@x???G?@?C?W??Ba???@??@?A?@_??@w\n",
"[^{??KF@w????B?B_@{???????W??w??|???@??G?O@_??F?_???@??_?@?W???N\n",
"Y~??W[N????B?F?Fo?A?@G?K??w_??O?C?OB???wG???@?@??@B???F_\n",
"Y~??W[N???_B?F?Fo?A?@??K??x???O?C??J???w_???_?@??@B???F_\n",
"Y~??W[N????B?F?Fo?A?@??K??x???O?C?OB??Aw_???_?@?A?B??@B_\n",
"Y~?GW[???@_F?N_?G?GOB@?[_??C????K??F??@w_???G?@?G?B?C?B_\n",
"X~?GW[??G@_F?N_?@?G?B??\\??@??GG?KA?FC???A??_?AB??AF\n",
"Y~?GW[??G@_F?N_?G?GOB??[_??G????K??F??@w_???O?@?O?B??AB_\n",
"X~?GW[??G@_F?N_?G?GOB??[_??G?GC?K??FC???A??_?@B???N\n",
"W~?GW[??G@_F_?O?`?WGFG??O?G@?W?_[A???O?G?O@_?_F\n",
"[~??W[N????B?F?Fo?A?@G?KG?w_???_???B???w??F__???A?????@_???w???N\n",
"Y~??W[N???_B?F_?G?H?BA?[O???_???K??F??@wG???@?@?@?B??_B_\n",
"Y~?GW[???@_F?N_?G?H?BA?[O??@????K??F??@wG???O?@?O?B?C?B_\n",
"W~?GW[??G@_F_?O?c?WOFC???_G?_W?O[C???_?GA?@_?_F\n",
"[~??W[N????B?F?Fo??O???K??w?@y????O????W??B_??NG???C???__??W?O?F\n",
"Y~?GW[???@_F?N_?@?GGB?_\\???@????K??F??@x???A??@?O?B?C?B_\n",
"W~?GW[??G@_F_?A?__WCFO???_G?_W?O[_??C??GA?@_?_F\n",
"Y~?GW[???@_F?N_?G?GOB@?[_??@????K??F??@w_???O?@?O?B?C?B_\n",
"W~?GW[??G@_F_?O?`?WGFG???_G?_W?O[O???_?GA?@_?_F\n",
"Z~??W[N????B?F?Fo??O@@?K??y????_???B???w??Fc???C??@?A?@_??_w\n",
"X~??W[N???_B?F_?@?GGB??\\????_G?OK?CFG???_??_?OB??AF\n",
"X~??W[N???_B?F_?@?GGB??\\??@??G?_K?GFC????G?_?OB??AF\n",
"[^{??KF@w????B?B_@{??@?C??W??y????G????W??B_??N?_???@??_??_W??CF\n",
"Z^{?GKF????B?F?Fo??G@?_K??y????_???B???w??F_G???G?@?A?@_??_w\n",
"Y~??W[N????B?F?Fo??O@??K??y??@??CO?B?C?wG???@?@??AB??@B_\n",
"X~?GW[???@_F?N_?@?GGB??\\??@??G_?K?_F?_??A??_A?B??AF\n",
"X~??W[N???_B?F_?G?GOB??[_??_?G?_K?GF@????G?_?OB??AF\n",
"Y~??W[N????B?F?Fo??O@@?K??y????_C?GB???x???A??@??@B???F_\n",
"Z^{??KF@w????B?B_@{??@?C??W??y????G@?@?W??B_O????@@???`_??@w\n",
"Y^{?GKF????B?F?Fo??G@?_K??y????_C?GB???wA???C?@??@B???F_\n",
"Z~??W[N????B?F?Fo?A?@A?K??x????_???B???w??Fa???@??@?A?@_??_w\n",
"X~??W[N???_B?F_?G?GOB??[_???_G?OK?CFC???G??_?OB??AF\n",
"Y~??W[N????B?F?Fo?A?@A?K??x????_C?GB???w_???_?@??@B???F_\n",
"Y~??W[N????B?F?Fo?A?@A?K??x???_?C?OB???wG???@?@??@B???F_\n",
"Y~?GW[???@_F?N_?@???B??[?@y??@??CC?B?G?w_???O?@?O?B?C?B_\n",
"W~?GW[??G@_F_?O?`?WGFG??A?G@?W?_[O???O?G?O@_?_F\n",
"X~?GW[???@_F?N_?G?GOB??[_??G?G@?K?OFC???C??_G?B??AF\n",
"X~?GW[???@_F?N_?G?GOB??[_??G?GC?K?_FC???A??_A?B??AF\n",
"X~?GW[???@_F?N_?G?GOB@?[_??C?G@?K??FC???A??_A?B???N\n",
"Y~??W[N????B?F?Fo??O@??K??y??@??C?OB??Aw_???_?@?A?B??@B_\n",
"Z^{??KF@w????B?B_@{??@?C??W??y????G@??@W??B_O???@?@???`_??@w\n",
"W~?GW[??G@_F_?O?`?W@FG??C?GC?W?_[O???O?G?O@_?_F\n",
"Z~??W[N_A?_B?FA?????B??[?@x???_?C?CB??_wG????C????B???B_??@w\n",
"W~?GW]?OG@_FA?@?_?W?FG??O?G?OW?G[A???O?G?@@_?AF\n",
"[~??W[N_A?cB?FA?????B??[?@w_???C???B???w??F__????G????@_???w???N\n",
"X~?GW]?OH@_FA?@?_?W?FC???C???W??[??N?_??A??_?CB??CF\n",
"Y~?GW]?OH@_FA?@?_OW?FC???C???W??[??N?O????_???B???F???F_\n",
"X~?GW]??G@_FA?@???W?F??|??@??G?_K?GFC???C??_G?B?@?F\n",
"Y~?GW]?OG@_FA?@???W?F??{_???O???K??F??@w_???O?@?O?B?@?B_\n",
"[~??W[N_???B?F?F`??????K??w?@y????G????W??B_??NG???C???__??W??_F\n",
"Y~?GW]???@_F?NA??_GCB??\\????_???K??F??@x???A??@?O?B??AB_\n",
"W~?GW]??G@_FA?@?_OW?FO???OG?OW?G[_??C??GA?@_?AF\n",
"Y~??W[N_A?_B?FA??_??B??[?@x????GC??B???w_????O@???J???F_\n",
"W~?GW]?OG@_FA?@?_OWAFG???GG??W??[O???@?G??D_??N\n",
"Y~??W[N_??_B?FA?????B??[?@y??@??C?GB?@?w_???_?@??_B??GB_\n",
"W~?GW]??G@_FA?@?_OW?FO??_?G?_W?O[O???O?G?G@_?AF\n",
"Z~??W[N_A?_B?FA?????B??[?@x????G???B???w??Fa???@??@??_@_?C?w\n",
"X~?GW]?OG@_FA?@?_OW?FG???G???W??[??NC???A??_?_B??CF\n",
"Y~?GW]???@_F?NA?????B??[?@y???G?CA?B?C?x???A??@?O?B??GB_\n",
"Y~?GW]???@_F?NA?????B??[?@y??@??CC?B?C?w_???O?@?O?B??GB_\n",
"X~?GW]?OG@_FA?????W?F??{_??G?G?OK?CFC???C??_G?B??OF\n",
"W~?GW]?OG@_FA?@?_?W?FG??A?G?OW?G[O???O?G?@@_?AF\n",
"X~?GW]?OG@_FA?????W?F??{_??G?GC?K?GFC???A??_?_B??OF\n",
"X~?GW]?OG@_FA?@???W?F??{_??C?G?OK??FC???A??_?_B???N\n",
"Y~??W[N_A?_B?FA?????B??[?@x???G?C?CB???w_????O@??GB???F_\n",
"W~?GW]?OG@_FA?@?_OW?FG??@?G?OW??[O???@?G??`_??N\n",
"W~?GW]?OG@_FA?@?_?W?FG??A?G?OW?@[O???O?G?G@_?AF\n",
"X~?GW]??G@_FO?G?`?WGF?_??O???W??[??NC???A??_@?B?@?F\n",
"Y~?GW]?OG@_FG?A???W?F??{C???O???K??F??@w_???O?@?O?B?@?B_\n",
"Y~?GW]???@_F?NO?C?GOB??[C???_???K??F??@w_???O?@?O?B??AB_\n",
"W~?GW]??G@_FO?G?`?W?F@???OG?OW?G[O???_?GA?@_?AF\n",
"W~?GW]?OG@_FG?A?_?W?F@??A?G?OW?G[O???O?G?@@_?AF\n",
"W~?GW]??G@_FO?G?`?W?F@??A?G?_W?O[O???O?G?G@_?AF\n",
"X~?GW]?OG@_FG?A?__W?F?_??G???W??[??NC???A??_?_B??CF\n",
"W~?GW]??G@_FO?G?`?W?FC??C?GC?W?_[@???A?G?G@_?AF\n",
"W~?GW]?OG@_FG?A?_?W?FC??C?GC?W?O[@???@?G?@@_?AF\n",
"W~?GW]??G@_FO?A?__W?FG??A?G?_W?O[O???O?G?G@_?AF\n",
"X~?GW]???@_F?NO?@?GGB??[_??C?G?_K??FC???A??_?@B???N\n",
"Y~??W[N_??_B?FO??@??B??[?@x???O?C?CB???w_???_?@??_B???F_\n",
"X~?GW[N_??_B?FO??@G?B??[_???GG??k??FC????C?_?@B???N\n",
"X~?GW]?AG@_FO?@???W?F??{_??C?G?OK??FC???A??_?_B???N\n",
"W~?GW]?AG@_FO?@?_OW?FG??@?G?OW??[O???@?G??`_??N\n",
"W~?GW]?AG@_FO?@?_?W?FG??A?G?OW?@[O???O?G?G@_?AF\n",
"[~?GW[??G@_F_?O?_?W?FA??C?GC?WA?[?_??C?G?O@_?_FG???C???_?C?W??_F\n",
"[~?GW[??G@_F_?O?c?W?FA??C?GC?W??[?_??C?G?O@_?_FC????O??_?A?W??AF\n",
"[~?GW[??G@_F_?O?_?W?FA??C?GC?WA?[_??C??G@?@_A?F?A???@??_?C?W??_F\n",
"[~?GW[??G@_F_?O?_?W?FA??C?GC?WA?[_???G?G?_@_@?FC????@??_?C?W??_F\n",
"[~?GW[??G@_F_?O?c?W?FA??C?GC?W??[O???G?G?_@_@?F?O???@??_?A?W??AF\n",
"[~?GW[??G@_F_?O?c?W?FA??C?GC?W??[O???O?G@?@_A?F?A???@??_?A?W??AF\n",
"[~?GW[??G@_F_?O?c?W?FA??C?GC?W??[O???G?G?_@_?AF?O???A??_?_?W??AF\n",
"[~?GW[??G@_F_?O?_?W?FG??O?GO?WG?[A???O?G@?@_A?F?A???@??_?C?W??_F\n",
"[~?GW[??G@_F_?O?_?W?FG??G?GG?WC?[@???G?G?_@_@?FC????@??_?C?W??_F\n",
"[~?GW[??G@_F_?O?_?W?FG??O?GO?WG?[A???G?G?_@_@?F?O???@??_?C?W??_F\n",
"[~?GW[??G@_F_?O?c?W?FC??G?GG?W??[A???G?G?_@_@?F?O???@??_?A?W??AF\n",
"[~?GW[??G@_F_?O?c?W_FA???_G??W??[C???_?G?_@_@?F?O???@??_??OW??AF\n",
"[~?GW[??G@_F_?O?c?W?FA???_G?_W??[C???_?G?O@_?_FC????O??_?A?W??AF\n",
"[~?GW[??G@_F_?O?c?W?FA??C?G@?W??[A???C?G?O@_?_FC????O??_?A?W??AF\n",
"[~?GW[??G@_F_?O?c?W_FA??C?G@?W??[A???C?G?O@_??F?O???@??_??GW???N\n",
"[~?GW[??G@_F_?O?_?W?FA??C?G@?W?_[_??C??GC?@_@?F?O???@??_?C?W??_F\n",
"[~?GW[??G@_F_?O?c?W?FA??C?G@?W??[O???_?G?_@_@?F?O???@??_?A?W??AF\n",
"[~?GW[??G@_F_?O?c?W?FA??C?G@?W?_[O???_?G?O@_??F?O???@??_?A?W???N\n",
"[~?GW[??G@_F_?O?_?W?FA???_G?_W?O[_??@??G?@@_?AFC????_??_G??W?G?F\n",
"[~?GW[??G@_F_?O?_?W?FA??C?G@?W?_[_???_?G?@@_?AFC????O??_@??W?G?F\n",
"[~?GW[??G@_F_?O?_?W?FA???_G?_W?O[_??@??GC?@_?CFC????O??_?_?W??_F\n",
"[~?GW[??G@_F_?O?c?W?FA??C?G@?W??[A???C?G?O@_??NC????O??_?_?W??_F\n",
"[~?GW[??G@_F_?O?_?W?FA??C?G@?W?_[_???_?G?O@_?CFC????O??_?_?W??_F\n",
"[~?GW[??G@_F_?O?_?W?FG??O?G?@W??{G??@??G@?@_A?F?_???O??_@??W?G?F\n",
"[~?GW[??G@_F_?O?_?W?FG??O?G?@W??{G??@??GC?@_C?F?O???C??_@??W?G?F\n",
"[~?GW[??G@_F_?O?_?W?FG??G?GG?W@?[A???C?G?@@_?AFC????O??_@??W?G?F\n",
"[~?GW[??G@_F_?O?_?W?FG??G?GG?W@?[A???C?G?O@_?CFC????O??_?_?W??_F\n",
"[~?GW[??G@_F_?A?_?W?FO??_?G@?W?_[C???_?G?O@_?_FC????O??_?C?W??_F\n",
"[~?GW[??G@_F_?A?_?W?FO??_?G@?W?_[C???_?GA?@_@?FC????@??_?C?W??_F\n",
"[~?GW[??G@_F_?A?__W?FO??_?G@?W??[A???C?G?O@_?_FC????O??_?A?W??AF\n",
"[~?GW[??G@_F_?O?`?W?FG???_G?_W??[C???_?G?O@_?_FC????O??_?A?W??AF\n",
"[~?GW[??G@_F_?O?`?W?FG??O?G@?W??[C???_?G?_@_@?F?O???@??_?A?W??AF\n",
"[~?GW[??G@_F_?A?__W?FO???_G?_W??[_???_?G?O@_?_FC????O??_?A?W??AF\n",
"[~?GW[??G@_F_?A?__W?FO???_G?_W??[_??C??GC?@_@?F?O???@??_?A?W??AF\n",
"[~?GW[??G@_F_?O?`?W?FG???_G?_W??[O??@??GC?@_@?F?O???@??_?A?W??AF\n",
"[~?GW[??G@_F_?A?__W?FO???_G?_W?O[_???_?G?G@_??FC????O??_?A?W???N\n",
"[~?GW[??G@_F_?A?_?W?FO??_?G@?W?_[C???A?G?@@_?AFC????_??_G??W?G?F\n",
"[~?GW[??G@_F_?A?__W?FO???_G?_W??[A???A?G?G@_?AFG???C???_G??W??AF\n",
"[~?GW[??G@_F_?O?`?W?FG???_G?_W??[C???A?G?G@_?AFC????_??_G??W??AF\n",
"[~?GW[??G@_F_?O?`?W?FG???_G?_W??[C???_?G?O@_?AFC????O??_?_?W??AF\n",
"[~?GW[??G@_F_?A?_?W?FO???_G?_W?@[_??@??GC?@_@?FC????O??_?_?W??_F\n",
"[~?GW[??G@_F_?A?_CW?FO??C?G?_W??[_???_?G?O@_?_FC????O??_?A?W??AF\n",
"[~?GW[??G@_F_?A?_CW?FO??C?G?_W??[_???_?G?O@_?AFC????O??_?_?W??AF\n",
"[~?GW]??G@_FA???_?W?FO??_?G?_W?O[C????OG?@@_?AFC????_??_G??W?G?F\n",
"[~?GW]?OG@_FA?@?_?W?FG???GG??W??[A???O?G?@@_?AFC????@??_??OW??AF\n",
"[~?GW]??G@_FA???_?W?FO??_?G?_W?O[C???_?G?A@_?CFC????O??_?_?W??_F\n",
"[~?GW]??G@_FA???_?W?FO??_?G?_W?O[O??@??GC?@_?GF?O???@??_?C?W??_F\n",
"[~?GW]??G@_FA?@?_?W?FO???OG?OW??[_???_?G?@@_?AFC????O??_?_?W??AF\n",
"[~?GW]??G@_FA?@?_?W?FO???OG?OW??[_??C??GC?@_?CF?O???@??_?A?W??AF\n",
"[~?GW]??G@_FA?@?_?W?FO???OG?OW?G[_???_?G?@@_??FC????O??_?A?W???N\n",
"[~?GW]??G@_FA?@?_OWAFO???OG??W??[_???A?G??D_??FC????@??_??GW???N\n",
"[~?GW]??G@_FA???_?W?FO??C?G?_W?O[_???_?G?A@_?CFC????O??_?_?W??_F\n",
"[~?GW]??G@_FA???_?W?FO??C?GC?W?_[_???A?G?A@_?CFC????O??_?_?W??_F\n",
"[~?GW]??G@_FA?@?_?W?FO??A?G?_W??[_???A?G?@@_?AFC????O??_?_?W??AF\n",
"[~?GW]??G@_FA?@?_?W?FO??A?G?_W??[_???A?G?G@_?CFC????O??_?A?W??AF\n",
"[~?GW]??G@_FA?@?_OW?FO??@?G?_W??[_???A?G??`_??FC????@??_??GW???N\n",
"[~?GW]?OG@_FA?@?_?W?FG??A?G?OW??[O???@?G?@@_??F?O????C?_??GW???N\n",
"[~?GW]??G@_FO?A?_?W?FG??C?G?_W??[A???A?G?@@_?AFC????O??_?_?W??AF\n",
"[~?GW]??G@_FO?A?_?W?FG??C?G?_W??[A???A?G?G@_?CFC????O??_?A?W??AF\n",
"[~?GW]??G@_FO?A?_?W?FG??C?G?_W??[O???_?G?O@_?CF?O???@??_?A?W??AF\n"};
#define NUMIRRED (sizeof(irred)/sizeof(char*))
