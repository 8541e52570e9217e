void spin_until_ready(void) {
    while (!ready())
        ;
    if (armed()) {
    }
}
