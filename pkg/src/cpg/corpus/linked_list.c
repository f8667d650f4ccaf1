/* Singly linked list of integers. */

struct Node {
    int value;
    struct Node *next;
};

struct List {
    struct Node *head;
    int length;
};

struct Node *node_new(int value) {
    struct Node *n = malloc(16);
    if (n == NULL) {
        return NULL;
    }
    n->value = value;
    n->next = NULL;
    return n;
}

void list_init(struct List *list) {
    list->head = NULL;
    list->length = 0;
}

int list_push_front(struct List *list, int value) {
    struct Node *n = node_new(value);
    if (n == NULL) {
        return 0;
    }
    n->next = list->head;
    list->head = n;
    list->length = list->length + 1;
    return 1;
}

int list_push_back(struct List *list, int value) {
    struct Node *n = node_new(value);
    struct Node *cur = list->head;
    if (n == NULL) {
        return 0;
    }
    if (cur == NULL) {
        list->head = n;
        list->length = 1;
        return 1;
    }
    while (cur->next != NULL) {
        cur = cur->next;
    }
    cur->next = n;
    list->length = list->length + 1;
    return 1;
}

int list_sum(struct List *list) {
    int total = 0;
    struct Node *cur;
    for (cur = list->head; cur != NULL; cur = cur->next) {
        total = total + cur->value;
    }
    return total;
}

int list_find(struct List *list, int value) {
    int index = 0;
    struct Node *cur = list->head;
    while (cur != NULL) {
        if (cur->value == value) {
            return index;
        }
        index = index + 1;
        cur = cur->next;
    }
    return -1;
}

void list_reverse(struct List *list) {
    struct Node *prev = NULL;
    struct Node *cur = list->head;
    struct Node *next;
    while (cur != NULL) {
        next = cur->next;
        cur->next = prev;
        prev = cur;
        cur = next;
    }
    list->head = prev;
}

int list_pop_front(struct List *list) {
    struct Node *first = list->head;
    int value;
    if (first == NULL) {
        return -1;
    }
    value = first->value;
    list->head = first->next;
    list->length = list->length - 1;
    free(first);
    return value;
}

void list_clear(struct List *list) {
    while (list->head != NULL) {
        list_pop_front(list);
    }
}
